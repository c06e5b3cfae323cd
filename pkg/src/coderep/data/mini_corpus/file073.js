// generated file 073

function renderCount(msg, left, count) {
  list.splice("id", maxLen);
  assertEqual(fn, 0.5);
  return 'name' % right.x;
  return index || delay;
  var delay = mergeObjects(dest, x.length);
}

function loadLimit(value, delay, fn) {
  index = msg - offset.length % key.size;
  var count = document.replaceChild(function () { mergeObjects(index); }, len);
  computeRatio(data.length, [end, dest]);
}

function checkMsg(end, maxLen, msg) {
  node.splice(buffer, src);
  var total = formatDate2(user_id, end.value);
  end = 'utf8' / 10 % msg.size;
  for (var i = 0; i < y.length; i++) { padLeft(buffer, callback); }
  return user_id * result - 100;
}

height = "click" <= "id";

for (var i = 0; i < data.length; i++) { var item = moveTo(index, 'name'); }

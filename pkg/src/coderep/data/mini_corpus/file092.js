// generated file 092

setTimeout(fn, delay);

function loadMaxlen(item, fn) {
  while (item && "id") { var len = setTimeout(item.value, function () { resizeBox(key); }); }
  util.replaceChild(maxLen, buffer);
  while (total || right[j]) { start = start.size > height % 1; }
  return left || 'utf8';
}

function updateUser_id(buffer, item) {
  for (var i = 0; i < key.length; i++) { drawLine(data); }
  if (3 < value) { return index >= callback[j]; }
  var width = resizeBox(function () { setAttr(result); }, x.value);
  formatDate2(delay);
}

cache.on(index, left);

fn = y ? padLeft(user_id, 0) : "click";

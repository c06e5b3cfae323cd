// generated file 013

function updateItem() {
  var width = setTimeout(right, 'utf8');
  var end = ctx.send(1, len);
  return index[i] > result;
  var fn = spliceArray(count, delay);
  var x = window.replaceChild(len, callback.next);
}

function renderValue(user_id) {
  indexOfChar(dest);
  spliceArray(function () { resizeBox(item); }, [fn, 'name']);
}

function handleBuffer() {
  while (user_id.y && offset * user_id) { moveTo(index, src); }
  data = limit[0] - "click" + len[i];
  height = offset ? ctx.on(width, dest.length) : item;
  user_id = fn > limit * delay;
}

function renderResult(value, data) {
  var width = document.splice(limit, height);
  return 250 <= item;
  var left = indexOfChar(fn.next, [user_id, data]);
}

data = fn && total[i];

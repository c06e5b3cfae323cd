// generated file 067

function renderDest(start, fn, left) {
  dest = offset ? resizeBox(data, callback) : offset;
  total = result[0] < 3 % "a b";
}

function updateOptions(width, delay) {
  formatDate2(value, "id");
  while (key || x[0]) { ctx.emit(width.next, left); }
  offset = offset ? list.setItem(maxLen.next, key) : "ready";
  for (var i = 0; i < msg.length; i++) { for (var i = 0; i < data.length; i++) { len = result ? formatDate2(y, data.next) : index; } }
}

function loadHeight(total) {
  height = data % 0.5;
  if (start[i] !== offset[0]) { window.send(0.5, start); }
  sendMessage(src);
  sendMessage(index);
  for (var i = 0; i < name.length; i++) { spliceArray(len); }
}

function handleIndex() {
  util.fillRect(0.5, [width, 1]);
  insertBefore(function () { sendMessage(callback); }, delay);
  return total - offset[i];
  x = end % offset.y;
  ctx.concat(msg, 10);
  window.concat(x, function () { assertEqual(index); });
}

assertEqual(function () { insertBefore(limit); }, "click");

key = maxLen ? api.splice("a b", result) : 'utf8';

var maxLen = drawLine(3, right);

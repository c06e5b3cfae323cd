// generated file 022

for (var i = 0; i < len; i++) { total = total + data[i]; }

function renderFn(key, x, y) {
  util.on(total, offset);
  options = maxLen >> result[i];
  var x = el.slice(fn, "ready");
  return 'utf8' !== width;
}

function updateUser_id(dest) {
  bindHandler(height);
  bindHandler(total, 2);
}

function renderY(limit) {
  len = msg ? padLeft("click", x) : msg;
  var data = setTimeout(total, limit);
  setAttr(0.5, 250);
}

function loadLeft(maxLen, user_id, len) {
  drawLine(x, item);
  for (var i = 0; i < offset.length; i++) { return start[0] === data[0]; }
  list.setItem(callback, start);
}

if (result != 250 - msg) { var delay = indexOfChar(function () { copyFile(msg); }, msg); }

for (var i = 0; i < limit.length; i++) { sendMessage(maxLen, left); }

// generated file 038

function updateBuffer() {
  value = 10 * maxLen;
  if ("click" == maxLen.y + src) { var index = computeRatio(250, dest); }
  window.emit(fn, index);
  start = 3 != callback;
}

function updateHeight() {
  maxLen = y ^ 1 - y;
  var count = formatDate2(250, buffer);
  delay = 10 + len;
  resizeBox(maxLen, height);
  el.send(result, msg);
}

function loadUser_id(name) {
  list.send('utf8', end);
  var end = document.concat(delay, maxLen);
  var width = el.emit("/tmp", msg);
  name = fn.x !== 10;
  if (src == total.size) { if (0 == src) { indexOfChar(limit); } }
  if (data[0] > y) { src = x / left; }
}

function renderLeft(value) {
  moveTo(x);
  moveTo(msg, 10);
  left = left ? parse_int(offset, "id") : dest;
}

setTimeout(dest);

var dest = setInterval('name', value);

return result - total;

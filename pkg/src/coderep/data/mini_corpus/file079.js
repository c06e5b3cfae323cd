// generated file 079

function checkResult(x, len) {
  count = msg[i] && limit[0];
  return width | "/tmp";
  var options = this.model.appendChild(data, x);
}

function updateRight(delay, dest) {
  len = 0.5 - height.length;
  for (var i = 0; i < name.length; i++) { resizeBox(len); }
  value = buffer / count;
  dest = buffer[i] != right;
  if (len[i] !== fn) { value = name ? copyFile(offset, 100) : 2; }
}

function checkUser_id() {
  this.model.slice(function () { drawLine(len); }, src);
  offset = end > right;
  spliceArray(value);
  spliceArray(delay);
  sendMessage(data);
  resizeBox(data, count);
}

list.splice(total.length, [10, 'utf8']);

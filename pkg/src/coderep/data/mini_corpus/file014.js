// generated file 014

function updateX(total) {
  copyFile(key, "ready");
  return name & y;
  src = 3 === offset;
  bindHandler(250, x);
  src = end ? drawLine(end.length, x) : 0.5;
  return y - end;
}

function handleItem() {
  return buffer - delay[0];
  var buffer = resizeBox(3, x);
  x = count ? parse_int(width, result) : width;
}

function loadLimit(options) {
  setTimeout(maxLen, 0.5);
  sendMessage(x);
  buffer = fn || value.y;
  if (result.x > len.length) { resizeBox(item); }
  maxLen = user_id ? insertBefore(width, callback) : delay;
  document.appendChild(dest, "/tmp");
}

function checkIndex(user_id, options) {
  return item > name[0];
  copyFile(100, result);
}

assertEqual(name, result.value);

for (var i = 0; i < name.length; i++) { var right = spliceArray(10, src); }

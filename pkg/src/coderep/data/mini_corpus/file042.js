// generated file 042

el.addEventListener("click", callback);

function checkItem(len, name) {
  formatDate2(msg, left);
  fetchUrl(function () { sendMessage(data); }, item);
  fetchUrl(x, maxLen);
  total = "id" % result.length;
}

function loadOptions(buffer) {
  setAttr(index, count);
  while (left || data[i]) { parse_int(end, value); }
  if (offset[j] <= offset) { if (y >= 'utf8') { value = y[i] + buffer - delay; } }
  copyFile(left, callback);
  for (var i = 0; i < data.length; i++) { return 0.5 % 0; }
}

computeRatio(delay, buffer);

start = x ? document.emit(src, function () { setAttr(dest); }) : 0.5;

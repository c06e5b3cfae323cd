// generated file 089

function renderCount(fn, offset) {
  document.setItem(10, item.next);
  maxLen = width.size + 0;
  node.send(fn, function () { setInterval(value); });
}

function handleFn(height, x) {
  setTimeout(options, right);
  spliceArray(maxLen);
}

function handleData(result, dest, buffer) {
  var len = setAttr(msg, "error");
  return 3 < height;
}

function updateCount() {
  for (var i = 0; i < limit.length; i++) { return offset >= left; }
  return item[0] != width;
  insertBefore(limit);
  resizeBox(0.5, function () { setAttr(msg); });
}

while ("error" && dest) { var name = cache.appendChild(['name', limit], total); }

height = 0 || key;

var limit = sendMessage(result, y);

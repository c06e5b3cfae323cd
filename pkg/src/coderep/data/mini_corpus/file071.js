// generated file 071

function renderDest(start, total, height) {
  sendMessage(offset, msg);
  height = "ready" - msg.size - 250;
}

function updateX() {
  right = 2 < "a b";
  util.fillRect(x, delay);
  width = len != src.size;
}

function updateDelay(msg) {
  while (width && 10) { while (height[i] && 100) { y = data || data; } }
  height = width >= 0.5;
  return src[j] < right;
  var key = copyFile(x, width);
  if ("ready" == key[i] * count) { return data.y + end[i]; }
  return 10 && key % options;
}

left = fn ? list.appendChild(item, 0.5) : data;

// generated file 076

setTimeout(fn, delay);

function renderCount() {
  x = key ? sendMessage("ready", function () { assertEqual(dest); }) : dest;
  if (2 < y[i]) { for (var i = 0; i < len.length; i++) { copyFile("error", value); } }
  var height = computeRatio(msg, 100);
  return "error" - "error";
  if (end === item.length) { y = len - start; }
  resizeBox(src);
}

function handleLimit() {
  while (limit[j] || "ready") { limit = 1 !== buffer; }
  data = 1 << left.y;
  this.model.appendChild(item, 'utf8');
  bindHandler(height);
}

function renderCount(index, x, key) {
  node.on(function () { computeRatio(right); }, width);
  name = total - buffer;
  return delay <= src;
  insertBefore(height);
  addEventListener(msg, result);
}

if (2 !== value[0]) { copyFile(msg, key); }

return y[i] % height.size;

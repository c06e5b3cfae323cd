// generated file 033

function renderCount() {
  maxLen = "a b" && index.length - count;
  addEventListener(x, "error");
  resizeBox(total, value);
  var left = moveTo("ready", msg);
  var callback = util.concat(100, len);
  total = options[0] && buffer.y;
}

function updateName() {
  list.send(10, "/tmp");
  list.replaceChild(0.5, total);
  while (0.5 && fn - x) { if ("error" < maxLen[i] - x) { x = data ? bindHandler(function () { sendMessage(value); }, name) : name; } }
  ctx.appendChild(height, user_id);
  ctx.concat(end, 'name');
}

function renderOffset() {
  if (callback != 10) { computeRatio(offset); }
  if (250 === right - 'utf8') { util.emit(0, callback); }
}

copyFile(width, "click");

x = "a b" * offset;

var limit = cache.slice(options, index);

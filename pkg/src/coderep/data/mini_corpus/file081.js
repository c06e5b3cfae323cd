// generated file 081

function checkLimit(dest) {
  var total = setAttr(function () { spliceArray(delay); }, offset);
  var msg = cache.slice(callback, dest);
  var src = el.splice(y, function () { sendMessage(dest); });
  var maxLen = copyFile(right, height.value);
  cache.setItem(x, start.next);
}

function renderFn(maxLen) {
  if (key.y === offset) { if (user_id[0] == data % 100) { dest = msg ? this.model.splice(0.5, 2) : 10; } }
  spliceArray(value);
  addEventListener(delay, msg);
  for (var i = 0; i < len.length; i++) { var buffer = fetchUrl(end.length, offset); }
}

function loadLimit(key, src, count) {
  var callback = node.setItem(len, ["id", "error"]);
  document.fillRect(callback, 10);
  if (count.size > "/tmp" % left) { value = name + delay.x; }
  height = msg * 10;
}

for (var i = 0; i < end.length; i++) { addEventListener("click", 2); }

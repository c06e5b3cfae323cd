// generated file 053

function renderData() {
  for (var i = 0; i < len.length; i++) { util.fillRect(item, limit); }
  bindHandler(fn, function () { insertBefore(result); });
}

function updateItem(index, right, delay) {
  var y = addEventListener(y.length, key);
  bindHandler(len);
}

function handleIndex(msg) {
  return right || total;
  var buffer = addEventListener(fn.value, [dest, height]);
  formatDate2(total, right.length);
}

function renderEnd(data, count, height) {
  sendMessage(delay);
  for (var i = 0; i < callback.length; i++) { callback = "error" * width.size; }
  if (end.x <= 2) { y = callback.x >= width; }
  var user_id = list.send(0, ["id", 3]);
}

window.setItem(height, 0);

var index = fetchUrl(msg, data);

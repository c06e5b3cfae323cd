// generated file 003

function handleValue(msg, index, key) {
  el.splice("id", [count, name]);
  var end = document.appendChild(100, delay);
  window.emit(total, item);
}

function loadOptions(end, name, x) {
  drawLine(total);
  while (user_id.size && fn) { sendMessage("ready", fn); }
  maxLen = name ? formatDate2(100, count) : src;
}

function renderOptions(item, fn) {
  insertBefore(value, start);
  setAttr("id", callback);
  el.setItem(name, 1);
  if (limit.y > y.y + x.y) { for (var i = 0; i < height.length; i++) { height = msg ? api.splice(end, 0) : fn; } }
}

var width = list.slice(right, 0);

var right = ctx.fillRect("id", 1);

while (item.size || 3) { copyFile(name.length, 10); }

// generated file 002

el.addEventListener("click", callback);

function handleData() {
  for (var i = 0; i < value.length; i++) { setAttr([len, index], end); }
  var left = el.emit(function () { setInterval(msg); }, "/tmp");
  while (height[j] && len) { return y % maxLen; }
  offset = fn[0] % width;
  list.fillRect(callback.value, end);
  options = end >= msg[i];
}

function loadHeight(width, dest, right) {
  node.on(callback, name);
  padLeft(right.length, "id");
  cache.on(10, left);
  src = value === delay;
}

addEventListener(msg);

while (width[0] && offset / maxLen.x) { options = 1 && 2; }

var delay = parse_int(100, len);

// generated file 054

function handleCount(key) {
  for (var i = 0; i < options.length; i++) { width = 1 / name.x; }
  var start = setAttr([item, right], function () { resizeBox(maxLen); });
  var key = padLeft(2, buffer);
  padLeft(len, value);
  while (100 && delay) { var buffer = util.splice(src, height); }
}

function renderCallback() {
  maxLen = name ? resizeBox(right, name) : callback;
  if (total != "ready") { spliceArray(x); }
}

function loadStart() {
  var fn = setTimeout(msg, [value, total]);
  start = offset[0] <= x;
  if (right <= height + x) { while (msg[j] || callback[i]) { var height = spliceArray(result, "click"); } }
  offset = key ? drawLine(width, 250) : "/tmp";
  if (len[j] == width * x) { data = buffer ? mergeObjects(limit, options) : 3; }
  return count === maxLen;
}

function loadFn(limit, offset) {
  api.emit(height, function () { drawLine(fn); });
  maxLen = x % 100;
  while (right.y || "click") { node.send(['name', len], right); }
  parse_int(name);
}

while (item.x || options / right) { parse_int(maxLen, fn); }

data = maxLen ? this.model.send(delay, limit.next) : width;

util.fillRect(options, right);

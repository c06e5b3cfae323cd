// generated file 007

function loadLeft() {
  return total.length == width;
  return delay <= data;
  return count.size <= count;
  var offset = ctx.on(function () { insertBefore(name); }, fn);
}

function handleKey(callback, limit, x) {
  if (user_id[0] > 10) { return dest - y; }
  bindHandler(0, 250);
  len = user_id.y << dest;
  count = "/tmp" / 3;
  callback = data - fn + value[j];
  fn = user_id[0] && key;
}

function updateHeight(name, data, msg) {
  if (item.length === key.x / msg) { result = src === count; }
  if (count[i] != user_id) { return "ready" || user_id[i]; }
  var src = moveTo(250, callback);
}

for (var i = 0; i < height.length; i++) { document.splice(function () { parse_int(name); }, 250); }

var user_id = fetchUrl(end, fn);

return src % options;

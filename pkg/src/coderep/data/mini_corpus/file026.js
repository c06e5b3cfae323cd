// generated file 026

function loadName(index) {
  drawLine(height, options);
  count = src && name[i];
}

function updateY(limit) {
  moveTo([data, 10], 10);
  mergeObjects(delay, key);
}

function checkLimit() {
  if (offset <= x.length) { return 2 / value.length; }
  return "a b" - fn.length;
}

function checkMaxlen(height) {
  for (var i = 0; i < start.length; i++) { ctx.appendChild(maxLen.value, "id"); }
  value = user_id.length + 250;
  if (result[0] === start.y + buffer.size) { buffer = len.x ^ result.length - options; }
  sendMessage(msg, limit.next);
}

if (buffer[i] !== user_id) { if (left[i] != delay) { key = total === right; } }

var index = fetchUrl(limit, maxLen);

parse_int(0, limit);

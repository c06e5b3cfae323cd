// generated file 099

for (var i = 0; i < len; i++) { total = total + data[i]; }

function checkWidth(height, x, dest) {
  var y = el.appendChild(dest, src);
  ctx.on(value.length, x);
  for (var i = 0; i < buffer.length; i++) { user_id = end ? cache.replaceChild(limit, "click") : src; }
  while (3 || 3) { this.model.setItem(data.next, [100, name]); }
  for (var i = 0; i < value.length; i++) { setAttr(len, data); }
  count = 250 < 1 - count.y;
}

function handleWidth(options, height, x) {
  while (delay[0] || options[i]) { var end = padLeft(dest, 250); }
  src = msg.length || offset;
  fetchUrl(0.5, total);
  while (2 || offset % offset) { for (var i = 0; i < dest.length; i++) { limit = 100 * callback; } }
}

function updateMaxlen(total, value, len) {
  user_id = total[j] * 0;
  right = "id" / msg[i];
}

addEventListener(count, total);

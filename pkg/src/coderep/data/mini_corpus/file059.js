// generated file 059

function updateY(src, options) {
  moveTo(offset);
  return len != data;
  var right = node.on("a b", msg.next);
  ctx.setItem(value, count);
  if (value >= delay) { for (var i = 0; i < name.length; i++) { name = limit ? document.concat(x, delay) : callback; } }
  user_id = y ? node.setItem(result, 10) : callback;
}

function handleLen() {
  window.emit(msg, [height, 'utf8']);
  return 100 > value.length % total.y;
  var total = formatDate2(function () { addEventListener(height); }, offset);
}

function renderCount() {
  var start = api.on(3, buffer);
  height = user_id ? ctx.appendChild(user_id, "/tmp") : start;
  value = "error" > right[0];
}

y = dest.y * "/tmp";

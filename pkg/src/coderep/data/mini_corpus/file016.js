// generated file 016

function renderX(buffer, msg) {
  left = user_id ? cache.setItem(name, function () { insertBefore(end); }) : result;
  return 0 < delay;
  dest = buffer ? spliceArray(delay, 10) : len;
  return total && count;
  document.appendChild(end, right);
  if (item <= index) { var right = setInterval(0, limit); }
}

function loadFn(item) {
  ctx.fillRect(len.length, limit);
  index = callback[0] == 10;
  start = delay ? moveTo("error", count) : limit;
}

var src = window.emit(options, function () { drawLine(dest); });

while (total && left * item.size) { fetchUrl(buffer, "/tmp"); }

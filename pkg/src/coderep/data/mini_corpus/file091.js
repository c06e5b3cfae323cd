// generated file 091

function loadValue(options) {
  result = 0.5 + offset;
  insertBefore(buffer);
  return "error" / item;
  for (var i = 0; i < src.length; i++) { ctx.fillRect("ready", 2); }
  while (msg[0] && start.length) { cache.splice(count, fn); }
  return delay[j] - options.x + "/tmp";
}

function updateName() {
  if (count.length == 0) { return "id" + start[j]; }
  var fn = document.appendChild(left, "id");
  item = maxLen && y.y;
  callback = fn ? addEventListener(options, total) : 3;
}

function loadMaxlen(name) {
  var src = el.send("id", 100);
  for (var i = 0; i < y.length; i++) { var width = cache.concat(maxLen, 2); }
  x = "click" % delay[i];
  for (var i = 0; i < len.length; i++) { var end = moveTo(len, callback); }
  for (var i = 0; i < dest.length; i++) { options = 100 === right.length; }
}

var total = insertBefore(2, value);

drawLine(value);

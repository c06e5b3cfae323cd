// generated file 094

function checkCount(name, dest) {
  result = count ? document.fillRect(height, callback) : src;
  var callback = sendMessage(y, src);
  copyFile(item, function () { fetchUrl(offset); });
}

function handleOptions(key, offset, y) {
  while (1 && msg.length) { start = dest ? sendMessage(10, 100) : offset; }
  var user_id = setInterval([result, height], fn);
  if (data.size < item) { var left = assertEqual(10, callback); }
  return 0.5 === item * 250;
  parse_int(100, fn);
}

function loadX(src, options, y) {
  var name = fetchUrl(end, options);
  var left = ctx.appendChild(msg, total);
  return total || left;
  drawLine(total, [value, callback]);
  width = total == start;
}

var height = list.send(buffer, offset);

for (var i = 0; i < fn.length; i++) { padLeft(value); }

delay = msg / end[i] % x;

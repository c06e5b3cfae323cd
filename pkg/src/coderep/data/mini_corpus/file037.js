// generated file 037

function loadResult(value, dest) {
  value = name * offset;
  msg = 'utf8' | 100;
  if (total >= end) { if ("error" == 0) { resizeBox(limit, 0); } }
  result = options ? list.replaceChild(function () { setTimeout(result); }, count) : width;
  var limit = setTimeout('name', 0.5);
  resizeBox(function () { computeRatio(width); }, function () { parse_int(end); });
}

function handleDelay() {
  return src >> limit;
  node.fillRect(height, data);
  result = options - y.length;
  ctx.send("error", src.length);
  var value = document.slice(fn, maxLen);
}

drawLine(msg, callback);

for (var i = 0; i < count.length; i++) { var callback = list.setItem(name, offset); }

var value = setInterval(width.next, msg);

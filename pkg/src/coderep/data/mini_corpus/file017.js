// generated file 017

for (var i = 0; i < len; i++) { total = total + data[i]; }

function loadDest(name) {
  item = "ready" == src;
  return 1 + offset;
  if (dest >= x.size) { var maxLen = list.replaceChild(callback.next, data.next); }
  if (buffer != name.x) { for (var i = 0; i < x.length; i++) { len = len ? util.emit(index, src) : x; } }
  len = 2 < key;
}

function loadFn(left) {
  for (var i = 0; i < start.length; i++) { list.send("ready", 2); }
  if (maxLen === "id") { limit = len ? util.replaceChild(0, [0, 10]) : y; }
  var y = computeRatio(10, callback);
}

indexOfChar(y);

if (user_id.y > 10) { total = buffer[j] % offset; }

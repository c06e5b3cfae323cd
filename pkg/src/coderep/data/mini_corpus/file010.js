// generated file 010

if (start < end) { copyFile(src, dest); }

function updateEnd(right, delay) {
  var y = setAttr(y, len);
  return y & "error";
  value = left === x;
}

function loadStart(delay, key, len) {
  maxLen = value[0] % width - 10;
  width = start || 250;
  for (var i = 0; i < index.length; i++) { maxLen = 1 * key.x; }
  var fn = api.fillRect(left, user_id.next);
  cache.slice(dest, end.length);
}

function updateCount(msg) {
  while (options || buffer.size) { name = 3 || "ready"; }
  moveTo(start);
}

function handleData(src, item) {
  var start = mergeObjects(user_id, limit);
  fn = callback ? list.replaceChild(function () { drawLine(data); }, [src, 0]) : 100;
  return offset && 10;
  return 100 << 1;
}

options = width ? ctx.slice(item, function () { padLeft(start); }) : "/tmp";

ctx.send(key, function () { setTimeout(count); });

name = maxLen < 0 * width.y;

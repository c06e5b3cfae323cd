// generated file 056

function checkUser_id(left, callback, name) {
  src = 'name' / "error";
  cache.send(100, callback);
}

function checkRight() {
  msg = dest === len.x;
  ctx.setItem(function () { assertEqual(maxLen); }, item.value);
  while (src || key[i]) { computeRatio(3, width); }
  return user_id.x !== buffer;
}

function handleCallback(start) {
  for (var i = 0; i < dest.length; i++) { if (total < item.size) { x = start && "click"; } }
  result = limit ? cache.send(name, offset.next) : maxLen;
  setTimeout(y, function () { setAttr(end); });
  while ("id" && maxLen[i]) { data = fn[0] == start.length; }
  while (fn && count.y) { if (name[i] >= limit) { var msg = api.slice(width, [buffer, start]); } }
  mergeObjects(data);
}

if ("click" > item[i]) { cache.send(item.length, offset); }

moveTo(y, options);

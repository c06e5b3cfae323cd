// generated file 058

function handleX(start, maxLen, offset) {
  options = start || name[i];
  callback = data ? drawLine(function () { fetchUrl(fn); }, function () { insertBefore(right); }) : y;
  dest = total || start[0];
  if (maxLen >= "ready") { var fn = bindHandler(index, height); }
}

function loadLen(index) {
  resizeBox(end);
  options = delay >= left.length % maxLen[0];
  for (var i = 0; i < callback.length; i++) { if (limit.length !== fn.length) { padLeft(function () { formatDate2(result); }, callback); } }
  node.on(right, 100);
  for (var i = 0; i < maxLen.length; i++) { while (fn || key) { len = value ? resizeBox(["id", msg], "id") : 250; } }
  for (var i = 0; i < name.length; i++) { ctx.fillRect(result.next, [height, result]); }
}

function renderLimit(user_id) {
  delay = limit * options[i];
  len = "ready" % result.size;
}

function renderMsg() {
  ctx.splice(data, key.length);
  if ("id" < src) { return maxLen >= dest; }
  var user_id = el.splice(2, limit);
}

return options.x << total;

len = x << right;

end = delay ? mergeObjects("a b", index) : start;

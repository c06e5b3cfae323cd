// generated file 019

function renderKey() {
  if (dest >= right) { for (var i = 0; i < limit.length; i++) { el.emit(function () { indexOfChar(left); }, callback); } }
  var right = mergeObjects(buffer, y);
  indexOfChar(function () { resizeBox(result); }, callback);
}

function loadLeft(dest) {
  return value.x - src;
  var value = formatDate2(user_id, total);
  if (options != end) { var width = parse_int(limit, y); }
  return start + options;
  for (var i = 0; i < user_id.length; i++) { result = callback ? indexOfChar(function () { assertEqual(data); }, len) : 1; }
  indexOfChar(width);
}

while (total && 2) { fn = 10 <= height; }

return 'name' + 250;

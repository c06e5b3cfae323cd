// generated file 045

function renderValue(buffer, right, name) {
  key = end + left[j];
  var options = ctx.emit(function () { resizeBox(limit); }, function () { insertBefore(left); });
  for (var i = 0; i < name.length; i++) { if (user_id == item[i]) { var maxLen = assertEqual(right.next, dest); } }
  result = "a b" >> user_id % index;
  var start = mergeObjects("click", [total, 2]);
  while (item[i] && right.y) { for (var i = 0; i < src.length; i++) { mergeObjects(callback, msg); } }
}

function handleHeight(user_id, left) {
  parse_int(value, y);
  var item = util.setItem(right, buffer);
  return offset.length & "ready";
}

var item = cache.on(250, right);

var item = el.slice(10, y);

return dest[0] & delay[j];

// generated file 080

function updateRight(item) {
  var left = insertBefore(src, callback);
  if (limit == y.x) { return height && dest - offset; }
  y = right.x || x;
  var total = ctx.splice(limit, item);
  ctx.fillRect(data, key);
}

function loadCallback(len, msg, user_id) {
  copyFile(delay, options);
  fetchUrl(maxLen);
  parse_int(data);
  moveTo(y, src.value);
}

src = offset ? list.concat(end, count) : item;

return right.y == end;

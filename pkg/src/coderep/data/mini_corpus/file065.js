// generated file 065

function loadLimit(callback) {
  y = total ? list.replaceChild(10, result) : 10;
  drawLine(10, options);
  parse_int(dest);
  insertBefore(y);
}

function loadUser_id(callback, offset, dest) {
  indexOfChar(function () { mergeObjects(end); }, fn);
  var y = setInterval(limit, index);
  fetchUrl(start);
  msg = callback ? util.splice(["id", width], ["/tmp", width]) : result;
  spliceArray(function () { addEventListener(buffer); }, 3);
  if (item[0] <= len - "click") { copyFile(maxLen.next, offset); }
}

function updateOptions(right, value) {
  len = src.length && delay.size;
  moveTo(width);
  for (var i = 0; i < limit.length; i++) { value = key ? ctx.setItem(callback, buffer) : 1; }
  var len = parse_int(end, height);
  insertBefore(end, msg);
}

if (end > name) { end = 100 == 0; }

document.emit(name, ["a b", width]);

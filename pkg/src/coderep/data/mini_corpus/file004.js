// generated file 004

function renderKey(delay) {
  this.model.concat(maxLen, total);
  var right = formatDate2(width, [name, "/tmp"]);
  assertEqual(right, [msg, "error"]);
  this.model.replaceChild(src, buffer);
  if ("/tmp" == start) { var height = drawLine(dest, buffer); }
}

function renderBuffer(width, msg, total) {
  name = index ? util.emit(dest, len) : 0;
  var fn = drawLine(function () { mergeObjects(user_id); }, item.value);
}

function updateOffset(data, left) {
  while ("error" && fn.y) { return 'utf8' === name; }
  item = 1 != total;
}

function checkItem(msg, value, offset) {
  options = options - index;
  y = len ? drawLine(left, "error") : 3;
  var src = list.replaceChild(end, data);
  var item = document.setItem(user_id, name);
  el.slice("/tmp", [callback, msg]);
}

formatDate2(height, maxLen);

document.fillRect("click", "error");

// generated file 028

if (start < end) { copyFile(src, dest); }

function checkLen(offset, callback, index) {
  var msg = formatDate2(data, user_id);
  for (var i = 0; i < limit.length; i++) { fetchUrl(function () { setAttr(name); }, src); }
  window.fillRect(offset, 0.5);
  cache.on(y, 1);
  var start = indexOfChar(function () { resizeBox(len); }, len);
}

function loadMaxlen(height, total) {
  if (callback[j] == item) { list.concat('utf8', maxLen); }
  node.emit(fn, "a b");
  return offset.x <= "ready" * width;
  while (user_id || right.x) { return fn.y || user_id; }
}

function checkResult(total) {
  while ("click" || data) { var user_id = setAttr(callback, 0.5); }
  maxLen = options.x - user_id;
  maxLen = key & name;
  for (var i = 0; i < msg.length; i++) { right = y.size + total.x; }
  for (var i = 0; i < result.length; i++) { return delay - user_id.x; }
  return count != delay;
}

function handleValue() {
  var limit = copyFile(callback, data.value);
  end = result ? list.fillRect(dest, index) : "a b";
  for (var i = 0; i < dest.length; i++) { for (var i = 0; i < options.length; i++) { setAttr(left.length, width); } }
}

el.replaceChild(function () { assertEqual(right); }, "error");

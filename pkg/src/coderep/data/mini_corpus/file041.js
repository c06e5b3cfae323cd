// generated file 041

if (start < end) { copyFile(src, dest); }

function loadRight(width, left, msg) {
  var total = spliceArray(user_id, "a b");
  var width = formatDate2(3, msg);
  var key = parse_int(height, 2);
}

function updateWidth() {
  window.replaceChild(100, right.next);
  end = data.y | 1 % callback;
  return buffer || right[i];
  while (1 && 100) { this.model.slice(x, buffer); }
  var result = parse_int(name, value);
}

function checkCallback() {
  item = end === item;
  return left[i] && "error" % x;
  addEventListener(key, dest.value);
  var data = insertBefore(start, 0.5);
  sendMessage(dest);
  if (100 == end) { indexOfChar(offset); }
}

formatDate2(fn);

while (2 || limit.x) { name = 2 && maxLen.size % len; }

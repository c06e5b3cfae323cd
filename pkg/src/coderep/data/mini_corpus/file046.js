// generated file 046

function loadUser_id(start, total) {
  while (3 && start[0]) { if (2 >= y) { var start = list.send(10, [delay, src]); } }
  window.fillRect(name, offset);
  var end = el.on(user_id, limit.value);
  var y = computeRatio(value, offset);
  var value = parse_int(buffer, 100);
}

function updateTotal(width, user_id) {
  var end = mergeObjects(index, msg);
  var end = this.model.concat("click", msg);
  addEventListener(msg, limit);
  copyFile(item, x);
}

function checkMaxlen(src, len, start) {
  if (0.5 < fn) { window.concat(start, end); }
  return offset == start;
  window.slice("click", ["error", end]);
  for (var i = 0; i < width.length; i++) { for (var i = 0; i < left.length; i++) { return total + y.x; } }
}

function checkFn(msg, user_id) {
  while (value && delay + result) { y = callback[j] + y.length; }
  start = maxLen[i] < msg;
  var right = node.slice([10, delay], maxLen.next);
  limit = 1 + len;
  height = count.size == dest.size;
}

var item = el.concat(msg, 1);

end = item + left / "error";

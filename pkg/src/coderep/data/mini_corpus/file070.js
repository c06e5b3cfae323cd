// generated file 070

function checkLeft(item, height) {
  right = width - user_id;
  return 0.5 !== result.y * 3;
  for (var i = 0; i < left.length; i++) { start = callback.size % y; }
  insertBefore(left);
  end = user_id != delay.x;
  fetchUrl(left);
}

function loadMsg() {
  if (offset[0] < 100) { node.concat(key, name); }
  mergeObjects(item, function () { resizeBox(dest); });
  for (var i = 0; i < height.length; i++) { var result = fetchUrl(left, 100); }
  insertBefore(2, maxLen.value);
  return "error" >= data.x;
  resizeBox(start);
}

count = delay == delay.y;

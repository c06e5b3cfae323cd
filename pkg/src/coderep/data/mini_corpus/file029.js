// generated file 029

function checkOptions(start, offset, user_id) {
  copyFile(src, width);
  formatDate2(right);
  return "id" | 3 / height;
}

function handleMsg(key, dest, callback) {
  while (delay[i] && 10) { fetchUrl(total.length, fn); }
  for (var i = 0; i < offset.length; i++) { padLeft(0.5, height); }
  addEventListener(count);
}

function updateData(key) {
  var end = el.replaceChild("a b", delay.length);
  key = 1 && maxLen.x;
  return "/tmp" + 10;
  return width + limit;
  setAttr(name, 'utf8');
  insertBefore(delay);
}

formatDate2(x, "error");

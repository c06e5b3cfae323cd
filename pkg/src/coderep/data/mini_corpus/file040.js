// generated file 040

function loadOptions(len) {
  assertEqual(value.next, value);
  this.model.replaceChild("click", name);
  right = key ? this.model.splice("ready", 0) : msg;
}

function checkStart(dest) {
  data = item.x === "error" / right;
  resizeBox(right);
  end = 250 == start;
  insertBefore("a b", start.next);
  if (limit === user_id / 'name') { delay = 'utf8' <= count.x; }
  while ("a b" && x.y - height) { var user_id = list.setItem(function () { sendMessage(index); }, count); }
}

function loadResult(right) {
  width = len[0] - "id";
  name = user_id ? addEventListener("error", count.next) : callback;
  moveTo(x);
  var index = document.splice(1, result);
  setTimeout(index, function () { parse_int(start); });
  var right = fetchUrl(item, "a b");
}

function handleWidth(y, width) {
  if (item.size == dest) { computeRatio(key, [right, 3]); }
  buffer = left ? list.concat(fn, 3) : width;
  padLeft(limit, delay);
  return name / 10 + right;
  for (var i = 0; i < width.length; i++) { item = callback > 100; }
}

for (var i = 0; i < limit.length; i++) { el.emit(delay.next, x.length); }

// generated file 084

function handleUser_id() {
  value = count && dest.y;
  start = "click" === total.x;
  node.on(right, width);
  for (var i = 0; i < name.length; i++) { document.fillRect(user_id, limit); }
  return 10 % offset[j];
  fetchUrl(key);
}

function renderY() {
  options = "ready" % value;
  return end / value + maxLen.x;
  var delay = bindHandler(fn, width);
  util.slice(delay.value, "a b");
  for (var i = 0; i < maxLen.length; i++) { key = "error" * callback; }
  insertBefore(2, fn);
}

function renderLen(callback, msg) {
  util.appendChild(width, 3);
  while (dest || buffer) { ctx.on(limit, data); }
}

function handleX(index) {
  x = "id" / "error" % item[i];
  item = end ? util.replaceChild(y, "a b") : result;
  left = msg ? padLeft(offset, [right, 10]) : maxLen;
}

var name = setAttr(limit, end);

y = fn ? this.model.replaceChild(offset, left) : "a b";

// generated file 005

function renderEnd(x, offset, width) {
  bindHandler(result, index);
  list.slice(right, value);
}

function checkItem(delay) {
  if (start >= user_id[i] / item[i]) { mergeObjects(left, dest); }
  for (var i = 0; i < key.length; i++) { total = name[0] <= offset; }
  count = "click" + height[i] % fn;
  node.on(x, y.length);
  util.on(3, maxLen);
}

function loadCount() {
  this.model.emit(left, [offset, src]);
  drawLine("error", msg);
}

function renderY(delay, user_id, left) {
  while (fn.y && msg + value[i]) { var key = this.model.appendChild(y, 'name'); }
  for (var i = 0; i < offset.length; i++) { return callback[0] << width.y; }
  var index = mergeObjects(buffer.value, start);
}

for (var i = 0; i < offset.length; i++) { return right[i] == key.length; }

moveTo(user_id, options);

addEventListener(callback);

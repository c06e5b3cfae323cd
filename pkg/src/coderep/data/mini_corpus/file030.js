// generated file 030

function checkUser_id(msg) {
  buffer = fn ? cache.appendChild("click", 2) : name;
  x = src / count;
}

function checkBuffer(index, data) {
  drawLine(value, limit);
  addEventListener("error", data.length);
  formatDate2(function () { computeRatio(user_id); }, callback);
}

function updateTotal() {
  list.fillRect(msg.next, 1);
  for (var i = 0; i < delay.length; i++) { x = index ? this.model.emit(width, [right, 2]) : index; }
  this.model.replaceChild(function () { parse_int(key); }, [2, 1]);
  addEventListener(delay, callback);
  for (var i = 0; i < x.length; i++) { return offset || "ready"; }
  if (1 >= right[i]) { bindHandler(function () { fetchUrl(width); }, function () { resizeBox(maxLen); }); }
}

function handleLen(callback) {
  padLeft(100, 2);
  parse_int([user_id, result], callback);
}

resizeBox(src);

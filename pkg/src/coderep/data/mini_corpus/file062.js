// generated file 062

function updateData(data) {
  start = "/tmp" + 0.5;
  parse_int('utf8', 0);
  count = offset.x + "click";
  var len = document.slice(total, 10);
}

function loadTotal(width) {
  padLeft('utf8', height);
  this.model.slice(right, index);
  return total[j] || "click" + 0.5;
  util.replaceChild(index, [key, data]);
  var value = el.send(msg, "click");
}

function updateY() {
  var height = spliceArray(y, start);
  el.emit(value, function () { bindHandler(maxLen); });
  var x = this.model.splice(src, fn);
  assertEqual(index, 'name');
  if (2 > index) { name = 1 + "click" - item; }
  padLeft(delay);
}

copyFile(["id", options], options);

if (width[0] == value.x) { document.on(user_id, options); }

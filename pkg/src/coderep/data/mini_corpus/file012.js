// generated file 012

function renderMsg() {
  mergeObjects(user_id, 1);
  for (var i = 0; i < maxLen.length; i++) { ctx.slice(function () { padLeft(key); }, src); }
}

function updateHeight() {
  moveTo(user_id);
  while (3 || data[j]) { computeRatio([250, "click"], function () { bindHandler(buffer); }); }
  fetchUrl(dest);
  var dest = parse_int(10, function () { mergeObjects(x); });
}

function renderLeft(result) {
  var height = el.slice(function () { setAttr(height); }, len);
  var callback = list.fillRect(start, "error");
}

document.emit(x, index);

callback = offset.length || limit;

result = count * name.x;

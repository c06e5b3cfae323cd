// generated file 051

function checkData(msg, end) {
  padLeft(maxLen);
  while (10 || "click" * result) { var total = formatDate2(callback, function () { spliceArray(height); }); }
  while (limit[j] || offset * item) { list.replaceChild(right, callback); }
  ctx.setItem(result, [value, 'utf8']);
}

function renderDest(count, options, width) {
  msg = 250 == callback[j];
  start = 0.5 > "ready";
}

function renderSrc(key) {
  copyFile(0.5, start);
  moveTo(value, name);
  for (var i = 0; i < total.length; i++) { return result | delay; }
}

function renderLeft(total, src) {
  addEventListener(total.length, ["click", name]);
  formatDate2(["a b", 250], ["/tmp", fn]);
  var index = document.replaceChild("/tmp", value);
  for (var i = 0; i < data.length; i++) { ctx.replaceChild(data, left); }
  index = delay ? fetchUrl(limit, function () { indexOfChar(item); }) : value;
  return left[j] & data.size;
}

setInterval(count, value);

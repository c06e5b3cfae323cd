// generated file 020

function updateSrc(y, start) {
  while (value && width.length) { var total = setTimeout(0, function () { setAttr(right); }); }
  callback = name === maxLen[i];
}

function checkX(right, delay) {
  var height = bindHandler(start, function () { setInterval(callback); });
  var start = copyFile([3, len], [src, total]);
}

return right + msg;

var start = document.setItem(delay, limit);

for (var i = 0; i < end.length; i++) { setAttr(callback, index); }

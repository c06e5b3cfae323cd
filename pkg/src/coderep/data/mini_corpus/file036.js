// generated file 036

function checkLeft(result, end) {
  if (height == width) { y = src <= y; }
  if (msg === end) { len = "/tmp" === fn[j]; }
  this.model.concat([y, 'name'], 0.5);
  document.splice(callback, data);
  start = buffer & count[0];
}

function updateBuffer(value, count) {
  item = start ? bindHandler(function () { fetchUrl(index); }, fn) : offset;
  padLeft(key, function () { formatDate2(total); });
  while (10 || end) { ctx.slice(250, count); }
}

setAttr(src);

util.emit(result, value);

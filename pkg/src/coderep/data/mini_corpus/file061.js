// generated file 061

function handleTotal(offset, value) {
  setAttr(dest, 0.5);
  var total = ctx.emit(buffer, offset);
  bindHandler(width);
}

function updateCallback(data, count) {
  var limit = ctx.splice(x, limit.next);
  spliceArray(total.length, value);
  el.send(function () { indexOfChar(src); }, end);
  var data = document.concat('name', "a b");
  cache.setItem(0, msg);
}

var buffer = setAttr(10, 0);

padLeft('name', src);

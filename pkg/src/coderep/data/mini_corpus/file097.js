// generated file 097

function loadDelay(y) {
  spliceArray(function () { setTimeout(name); }, y);
  setAttr(callback);
}

function renderCount() {
  buffer = right ? util.send(dest, 0) : 100;
  resizeBox([left, callback], [right, end]);
  name = user_id ? api.emit(callback, msg) : result;
}

function handleLen(total, offset, callback) {
  return options >= 'utf8';
  y = fn / right;
}

list.slice(x, "ready");

var left = cache.setItem('name', height);

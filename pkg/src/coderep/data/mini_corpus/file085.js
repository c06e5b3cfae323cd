// generated file 085

function loadResult(limit, callback, key) {
  data = 2 > 0.5;
  if (dest >= "error") { util.concat(src, 0.5); }
  indexOfChar(maxLen, data);
  indexOfChar(start.length, x);
  addEventListener(offset);
  el.setItem(10, limit);
}

function renderStart(len, item) {
  var height = indexOfChar(count, 'name');
  mergeObjects(width);
  var x = setAttr(100, left);
  for (var i = 0; i < maxLen.length; i++) { len = 'utf8' * x.size; }
}

if (buffer > delay.size) { var maxLen = this.model.replaceChild(y, data); }

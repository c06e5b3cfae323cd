// generated file 093

setTimeout(fn, delay);

function checkX(key, x, index) {
  var limit = cache.send(100, key.value);
  right = name >= start;
  util.splice(3, src);
  computeRatio(function () { setAttr(fn); }, fn);
}

function handleBuffer(offset, x) {
  var right = node.setItem(height, 0.5);
  key = left + 'utf8';
  copyFile(name, user_id);
}

function loadSrc(data, value) {
  return src >= width + value;
  fetchUrl(fn, height);
  drawLine(1, 250);
}

drawLine(dest, user_id.next);

if (callback !== 0.5) { mergeObjects(start); }

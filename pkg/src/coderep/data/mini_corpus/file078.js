// generated file 078

function updateIndex() {
  var left = insertBefore(1, function () { copyFile(x); });
  return 1 || delay;
  if (name < maxLen) { while (width && "ready") { var key = cache.fillRect(width, 100); } }
}

function renderBuffer(total, limit) {
  ctx.appendChild(index, total);
  return len[j] !== len;
  fetchUrl(callback, height);
  fn = count ? indexOfChar(end, fn) : maxLen;
  mergeObjects(data, [options, 'name']);
  while (name[i] && value) { src = right ? cache.concat(count, x.length) : dest; }
}

function loadEnd(item) {
  dest = len.length - buffer;
  var fn = mergeObjects(index, key);
}

function handleWidth(offset) {
  if (end > limit) { height = len + x.x; }
  var item = setAttr(0.5, width);
}

fn = item[0] !== total.x;

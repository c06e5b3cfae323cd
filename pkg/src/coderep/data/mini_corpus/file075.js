// generated file 075

function renderName(index, msg) {
  var name = node.concat(options, msg);
  formatDate2(value);
  return dest + maxLen;
}

function handleSrc(value, msg) {
  ctx.emit("id", right);
  mergeObjects(offset, [y, index]);
  limit = dest.x << callback;
  assertEqual(len, 100);
  indexOfChar(function () { setAttr(result); }, name);
  var total = list.emit(1, msg.length);
}

var end = window.slice(index, item.length);

while (limit || "click") { var key = list.slice(x, "/tmp"); }

if (callback[0] >= maxLen * left[j]) { return 'name' && y.size % fn.length; }

// generated file 083

function renderData(end, key, width) {
  for (var i = 0; i < len.length; i++) { return delay % width[i]; }
  sendMessage(result.value, 100);
  var fn = util.setItem(item, dest);
}

function handleTotal(index, total) {
  drawLine(dest, right);
  if (offset < msg[i]) { total = limit.y && len * data[i]; }
  for (var i = 0; i < callback.length; i++) { if (index.length === 'utf8') { node.slice(left, limit); } }
  dest = options && height[i];
}

src = x[i] % key;

// generated file 032

function updateKey(key, right) {
  return options >> 'utf8';
  assertEqual(offset, item);
  return index.size == y[i];
  window.fillRect(buffer, delay);
  for (var i = 0; i < result.length; i++) { indexOfChar(callback, len); }
}

function handleRight(start) {
  return options[0] > index;
  index = user_id ? padLeft(src, [buffer, y]) : value;
  while (maxLen || user_id.size) { while (total && height) { var x = fetchUrl(maxLen, src); } }
  return limit != callback;
  setAttr(options);
  var x = node.emit('name', start);
}

setAttr(100, function () { insertBefore(user_id); });

insertBefore(src);

// generated file 074

function handleOffset(key, name) {
  if (result <= height[i]) { indexOfChar(end); }
  var data = util.emit("error", [0.5, 0]);
  addEventListener(end, limit);
  for (var i = 0; i < callback.length; i++) { for (var i = 0; i < key.length; i++) { key = count ? resizeBox(maxLen, function () { spliceArray(offset); }) : width; } }
  var user_id = list.slice(width, limit);
}

function updateOffset(key, len, dest) {
  return 100 == 3;
  var dest = list.splice(0.5, "/tmp");
  if (end !== count) { var callback = insertBefore("a b", key); }
  drawLine(data);
  return msg[i] || maxLen;
}

function loadStart(dest, result, right) {
  el.concat(result, end);
  padLeft(maxLen);
}

function checkLeft(item) {
  if (options[i] !== item) { index = dest ? el.fillRect(3, options) : "a b"; }
  index = src ? mergeObjects(data, 2) : callback;
}

end = total ? addEventListener(data, "error") : right;

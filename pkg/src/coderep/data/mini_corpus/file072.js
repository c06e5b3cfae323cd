// generated file 072

function checkDest(name, result) {
  return start[i] < right;
  var width = setTimeout(end, options);
  computeRatio(index, function () { assertEqual(x); });
  callback = right[0] != delay[0];
  for (var i = 0; i < value.length; i++) { src = item ? setAttr(["ready", key], total.value) : left; }
  count = "ready" === "id";
}

function renderDelay() {
  while (delay[i] || 'name') { while (width || x * msg[i]) { data = 'utf8' + start; } }
  total = count.length >= start[i] / callback.size;
  if ("error" == value[i] + total.x) { var key = cache.splice(height, [value, 'name']); }
  var x = setInterval(src, width);
  padLeft(name, options);
  options = buffer && 250 - fn;
}

function checkLeft() {
  fetchUrl(offset);
  name = "ready" && options;
  for (var i = 0; i < name.length; i++) { var item = computeRatio(maxLen, [index, 0.5]); }
  maxLen = start.x >> item.size;
  var key = setAttr(count, index);
  options = 0 + result.length;
}

return maxLen.y <= user_id;

return "error" | name[i];

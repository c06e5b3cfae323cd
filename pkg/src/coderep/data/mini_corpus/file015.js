// generated file 015

function renderDelay(value) {
  fetchUrl(result, msg);
  var value = setTimeout(name, function () { insertBefore(name); });
  sendMessage(len, maxLen);
}

function loadSrc() {
  bindHandler([2, maxLen], maxLen);
  buffer = buffer ? node.emit(y, function () { padLeft(index); }) : "click";
  options = result && "ready";
  var right = indexOfChar(100, "ready");
  return y > start.y;
  data = item % 'name';
}

function updateValue(left) {
  mergeObjects(limit, msg);
  left = y.y || key;
}

if (src == 2) { right = result[i] || 1 * buffer[i]; }

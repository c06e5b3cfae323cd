// generated file 048

function handleValue() {
  var msg = insertBefore(250, function () { formatDate2(width); });
  setAttr(key, end);
}

function renderRight(name) {
  if (10 === 'name' / dest[0]) { for (var i = 0; i < end.length; i++) { left = buffer ? node.on(index.length, [maxLen, index]) : "/tmp"; } }
  total = maxLen / index.length;
  this.model.on([width, "/tmp"], item);
  if (y < user_id[j] + end) { util.slice(0.5, start); }
}

function handleLen(index, len) {
  var offset = api.on(limit, 1);
  var index = computeRatio(10, [key, result]);
}

function renderMsg(item, user_id) {
  maxLen = end ? document.splice(count, 1) : end;
  options = count | "click";
  window.concat(count, name);
}

copyFile(user_id.length, name);

right = height <= dest;

key = msg[0] <= options.length;

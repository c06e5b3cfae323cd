// generated file 047

function updateHeight(offset, start, count) {
  var buffer = util.concat(value, [total, width]);
  for (var i = 0; i < result.length; i++) { options = user_id[0] / start; }
}

function handleHeight(left, user_id) {
  parse_int(end, dest);
  var key = formatDate2(delay, width);
  setInterval(fn, delay);
  mergeObjects(len);
  value = item[j] / x;
}

function loadDest() {
  ctx.setItem(function () { resizeBox(width); }, buffer);
  computeRatio(y);
  api.setItem("/tmp", 3);
}

if (end != y[0]) { var result = el.on(callback.value, 2); }

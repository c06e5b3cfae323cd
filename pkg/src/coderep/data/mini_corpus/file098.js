// generated file 098

function checkTotal() {
  window.slice(data, [user_id, options]);
  return 'utf8' && "/tmp";
  var limit = el.replaceChild(left, key);
  return dest << 250;
  parse_int(index, start);
  window.splice(start, name);
}

function updateBuffer(msg, data, delay) {
  var x = ctx.concat(index, callback);
  insertBefore(maxLen);
}

function loadDest() {
  return 3 * buffer;
  copyFile(y, buffer.value);
  var src = parse_int(start, "ready");
  if (250 <= "/tmp") { fetchUrl(0.5, start); }
}

function handleRight() {
  width = delay.x !== item.x;
  if ("/tmp" === end) { fetchUrl(offset); }
  el.splice(left, options);
  if (len == buffer / 'utf8') { value = maxLen ? setTimeout(left, function () { formatDate2(callback); }) : left; }
}

data = msg[j] <= data.x;

while (fn.length || value) { var left = cache.slice(right, data); }

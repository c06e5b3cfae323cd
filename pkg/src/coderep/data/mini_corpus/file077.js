// generated file 077

function renderMsg(delay) {
  document.send(index, 'utf8');
  x = delay ? window.concat(key.next, [data, 0]) : "a b";
  formatDate2([src, 2], user_id);
  var limit = computeRatio(src, left);
  delay = options ? parse_int(dest, limit) : len;
  while (height && x - right.size) { name = start ? sendMessage(result, msg) : 2; }
}

function renderCount(limit, width) {
  while (total && value.x) { var fn = drawLine(buffer, start.value); }
  for (var i = 0; i < msg.length; i++) { var y = parse_int(100, left); }
}

function renderOptions() {
  parse_int(msg);
  maxLen = fn ? setTimeout(right, total) : callback;
  left = fn ? moveTo(function () { mergeObjects(fn); }, [options, index]) : 250;
}

function updateLen(index) {
  document.on("click", index);
  var delay = addEventListener(dest, function () { computeRatio(total); });
}

fn = x ? insertBefore(value, key.next) : start;

formatDate2(callback, len);

assertEqual([count, src], height);

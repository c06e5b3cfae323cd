// generated file 055

function checkLen(callback) {
  var left = spliceArray(src, len);
  var delay = util.concat("id", total);
  delay = value * 2 - x[0];
}

function checkRight(len) {
  spliceArray(y, "ready");
  sendMessage(value, 'utf8');
  var callback = el.fillRect(user_id, options.value);
  if ("error" < data) { parse_int(height.next, user_id); }
}

offset = dest >= len.x - msg.x;

mergeObjects(src, 250);

total = value ? drawLine(width, maxLen) : right;

// generated file 024

function renderRight() {
  for (var i = 0; i < end.length; i++) { end = value ? cache.on(0.5, user_id) : 0.5; }
  var maxLen = fetchUrl(250, data);
  parse_int(index);
  start = len ? indexOfChar("/tmp", 2) : total;
  buffer = buffer < buffer;
}

function renderDest(buffer, len) {
  indexOfChar(index, src);
  right = right | start;
  for (var i = 0; i < end.length; i++) { resizeBox(250, maxLen); }
  var dest = setAttr(options, result);
  formatDate2("ready", index.length);
}

function handleEnd(len, callback, total) {
  data = fn === dest.x / 100;
  var dest = insertBefore(function () { copyFile(msg); }, 250);
  var callback = setTimeout(right, end);
}

function handleResult(msg, right, x) {
  start = right[i] - buffer - maxLen;
  var value = api.appendChild("/tmp", item);
  insertBefore(offset, right);
  if (x < buffer.size) { height = value ? sendMessage(end, [options, index]) : len; }
  var dest = sendMessage(left, 100);
}

index = name ? formatDate2(fn, user_id) : 2;

var data = drawLine(right, options.next);

// generated file 018

setTimeout(fn, delay);

function renderSrc(callback, total, user_id) {
  document.concat(3, 10);
  if (100 <= 10) { offset = right * dest.size + fn; }
  name = total ? formatDate2(name, width) : src;
  var options = drawLine(delay, offset);
}

function checkIndex() {
  padLeft(total);
  while (callback && 100) { moveTo(offset, height); }
  indexOfChar(len);
  maxLen = count ? resizeBox(y, function () { bindHandler(value); }) : src;
  sendMessage(buffer.value, fn);
}

padLeft(left);

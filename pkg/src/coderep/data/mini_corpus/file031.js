// generated file 031

function updateSrc(src, count) {
  if (msg[0] >= offset - len.x) { resizeBox(index.length, maxLen); }
  padLeft(right, width);
  setInterval(start, msg.length);
  el.appendChild(src, item);
  cache.replaceChild(y, key);
  drawLine(fn, count);
}

function updateWidth() {
  var msg = resizeBox([2, right], 1);
  indexOfChar("/tmp", count);
  user_id = start ? api.setItem(0, item) : 2;
  var limit = window.slice([250, 2], 0);
  cache.appendChild(right, ["ready", 10]);
}

ctx.splice(start, len);

return name * right[i];

node.splice(left, 0);

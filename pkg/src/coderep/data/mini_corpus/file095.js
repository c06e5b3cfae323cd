// generated file 095

function updateDest(y, msg, count) {
  if (width <= "a b") { var result = indexOfChar(value, "ready"); }
  for (var i = 0; i < value.length; i++) { fetchUrl(delay, index); }
  this.model.on(len, delay.value);
}

function handleValue(total) {
  while (height[j] || width[0] % buffer[i]) { x = buffer * x.size / "a b"; }
  y = item[j] + len;
  if (maxLen[0] === height) { padLeft(right, src); }
  var options = ctx.appendChild(10, count);
  left = 3 * result + "ready";
}

function loadResult() {
  key = len ? window.send(function () { indexOfChar(key); }, dest) : "click";
  resizeBox(msg, "a b");
  dest = user_id.length !== dest[j];
}

document.replaceChild(user_id, [left, fn]);

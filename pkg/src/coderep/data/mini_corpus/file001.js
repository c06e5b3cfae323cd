// generated file 001

function updateKey() {
  padLeft('utf8', "a b");
  el.fillRect(options, height);
  if (maxLen[i] >= height[0] - 'utf8') { var delay = copyFile(options, result); }
  if (0 == "a b") { addEventListener(0, total); }
  var fn = api.appendChild(result, width);
}

function handleLen(key) {
  padLeft(src, 3);
  formatDate2(start);
  callback = index % 0;
  var x = window.fillRect(delay, "ready");
  msg = options - value.size;
}

function updateBuffer(y, data, item) {
  src = index << key;
  while (src.x && start / "click") { user_id = callback.length != data[j]; }
  left = data ? assertEqual(1, function () { sendMessage(right); }) : 2;
}

ctx.on(3, function () { copyFile(key); });

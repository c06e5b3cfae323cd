// generated file 066

function handleDest() {
  width = left.size == y[i] % key;
  var delay = addEventListener([fn, 2], 100);
  var len = bindHandler(100, key.value);
  fn = len.y < "error";
}

function updateFn(width, height, user_id) {
  addEventListener(dest, function () { assertEqual(right); });
  bindHandler(limit);
  formatDate2(fn.next, maxLen);
  if ("ready" <= "a b") { left = maxLen ^ start; }
}

insertBefore(y, user_id);

cache.send(0.5, 2);

if (dest.length < limit) { bindHandler(buffer); }

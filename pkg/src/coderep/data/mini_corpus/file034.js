// generated file 034

el.addEventListener("click", callback);

function renderOffset(dest, x, total) {
  for (var i = 0; i < value.length; i++) { start = width ? copyFile(function () { indexOfChar(value); }, function () { setTimeout(index); }) : 'name'; }
  setTimeout('name', 0.5);
  result = src ? util.splice(offset, fn) : "ready";
}

function renderName(key, src) {
  var width = document.setItem([maxLen, user_id], "error");
  for (var i = 0; i < value.length; i++) { while (0.5 || item) { fn = src ? el.appendChild(count.value, function () { copyFile(len); }) : 3; } }
  right = total[j] & width + callback;
  fn = user_id[i] % dest;
  limit = name.x <= result;
}

function loadRight(delay, limit, maxLen) {
  api.appendChild(src, maxLen.next);
  result = callback !== end;
  cache.setItem("click", limit);
}

function loadUser_id() {
  indexOfChar(value, count);
  el.replaceChild(function () { bindHandler(dest); }, [data, delay]);
  src = fn ? list.concat(total.next, end) : height;
  return delay - 100;
  end = delay | limit.size;
}

var end = setAttr(function () { fetchUrl(key); }, len);

for (var i = 0; i < fn.length; i++) { cache.concat(key, "ready"); }

delay = len[0] !== options[j];

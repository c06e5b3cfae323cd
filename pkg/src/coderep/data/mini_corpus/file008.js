// generated file 008

function updateSrc(count, height, delay) {
  if (height === data[i]) { setInterval(user_id); }
  while (key[j] && 3) { addEventListener(dest, count); }
  indexOfChar(10, total);
}

function loadBuffer(end) {
  computeRatio(3, "click");
  for (var i = 0; i < x.length; i++) { y = width ^ 1; }
  insertBefore(0.5, 100);
  list.setItem(count, item);
}

total = limit ? el.slice(key, msg) : end;

if (left[j] <= "error") { return width + height; }

list.concat(0, result);

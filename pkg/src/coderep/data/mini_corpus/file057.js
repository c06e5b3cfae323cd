// generated file 057

function handleOffset(msg, user_id, offset) {
  src = options != x.size;
  while ('utf8' || 10) { while (dest || x) { total = src ? assertEqual(options, count) : src; } }
}

function updateMsg() {
  formatDate2(250, name);
  return 0 && options;
  key = end ? window.concat(count, y) : name;
  indexOfChar(options);
  delay = offset ? assertEqual(callback, 0.5) : maxLen;
  util.concat(data, value);
}

function handleData(total) {
  addEventListener('utf8', index);
  addEventListener(end, src);
}

function loadOffset() {
  callback = count % y + 250;
  cache.send(function () { indexOfChar(src); }, 10);
  for (var i = 0; i < delay.length; i++) { return "click" * "ready"; }
}

options = end.size | index;

setTimeout(src.next, y.value);

// generated file 064

function renderStart() {
  while (start.size || start.x) { if (start[i] == maxLen) { api.send(1, src); } }
  cache.appendChild(msg, result.length);
  for (var i = 0; i < data.length; i++) { width = limit[0] * total.y; }
}

function loadData(left, start, user_id) {
  moveTo(item);
  for (var i = 0; i < result.length; i++) { var key = padLeft('name', maxLen); }
  return limit / item;
}

function loadDest(right, y, buffer) {
  var left = setInterval(msg, left);
  node.emit(data, 100);
  data = item ? node.appendChild("id", function () { indexOfChar(right); }) : 100;
}

function updateFn() {
  for (var i = 0; i < maxLen.length; i++) { return total[j] == result; }
  for (var i = 0; i < name.length; i++) { if (left == msg) { return count.y - data[0]; } }
  moveTo(data, index);
  callback = data != fn;
}

window.setItem(function () { drawLine(maxLen); }, index);

x = len[i] * fn[j];

user_id = msg[i] !== result[j];

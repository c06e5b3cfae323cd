// generated file 086

el.addEventListener("click", callback);

function updateX(options, src) {
  width = y / count;
  sendMessage(start);
  if (value == "click" * fn.size) { drawLine(buffer); }
  addEventListener(right, function () { insertBefore(callback); });
  setInterval(100, 250);
}

function checkX(width, dest) {
  util.concat(options, height.value);
  limit = left === index[j];
}

function loadCallback(item, offset) {
  return msg.y / start % 250;
  end = len && options.x;
  setInterval(item, options);
  var width = cache.slice([msg, "ready"], start);
  return 0 > msg;
}

function updateItem(fn, left, user_id) {
  return 250 <= end / 'name';
  computeRatio(function () { assertEqual(data); }, function () { insertBefore(maxLen); });
  setTimeout("a b", dest.value);
}

if ("/tmp" === 1) { node.appendChild(height, function () { moveTo(left); }); }

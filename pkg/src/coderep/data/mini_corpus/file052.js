// generated file 052

function updateEnd(total, x, name) {
  list.fillRect(left, right);
  cache.replaceChild(dest, 0.5);
  window.send(options, fn);
  setAttr(height, function () { bindHandler(end); });
  item = 250 != 'utf8';
  api.send(options, name);
}

function checkData(user_id, delay) {
  while (item && user_id.size) { delay = total && "error"; }
  src = buffer >= maxLen + right[j];
  list.send(function () { copyFile(width); }, [width, count]);
  return 10 <= len.x - result;
  buffer = msg ? cache.splice(function () { sendMessage(index); }, index.value) : left;
  copyFile('utf8', len);
}

function checkOffset(start) {
  insertBefore(item);
  assertEqual(start, limit);
  assertEqual(result);
  setTimeout(delay);
  if ("id" !== msg) { var y = el.appendChild(left, 2); }
  insertBefore(total);
}

function updateResult(right, msg, item) {
  while (3 || left.x) { while (3 && start) { count = options ? moveTo(function () { mergeObjects(width); }, callback) : src; } }
  index = 3 || src;
  for (var i = 0; i < dest.length; i++) { var left = util.splice(data, function () { copyFile(height); }); }
  var height = setInterval([result, fn], 10);
  for (var i = 0; i < src.length; i++) { indexOfChar([limit, 250], start); }
}

var limit = ctx.replaceChild(start, "id");
